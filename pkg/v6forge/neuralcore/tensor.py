"""Reverse-mode differentiation over numpy arrays.

A Tensor stores a value, an accumulated gradient and a closure that
pushes its gradient to the tensors it was computed from. Calling
backward() on a scalar result visits the graph in reverse topological
order and runs every closure once.

Only the primitives defined in this package build graph nodes, so any
loss made from them is differentiable exactly.
"""

from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import ShapeMismatch, UnsupportedComposition

ArrayLike = Union[np.ndarray, float, int]


class Tensor:
    """An array value with gradient bookkeeping.

    Example:
        w = Tensor(np.ones((2, 2)), requires_grad=True)
        loss = total(matmul(w, w))
        loss.backward()
        print(w.grad)
    """

    __slots__ = ("data", "grad", "requires_grad", "_parents", "_backward", "op")

    def __init__(
        self,
        data: ArrayLike,
        requires_grad: bool = False,
        _parents: Tuple["Tensor", ...] = (),
        op: str = "",
    ):
        self.data = np.asarray(data)
        self.grad: Optional[np.ndarray] = None
        self.requires_grad = requires_grad or any(p.requires_grad for p in _parents)
        self._parents = _parents
        self._backward: Callable[[], None] = lambda: None
        self.op = op

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.data.shape

    @property
    def dtype(self):
        return self.data.dtype

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape}, op={self.op or 'leaf'})"

    def accumulate(self, grad: np.ndarray) -> None:
        """Add an incoming gradient."""
        if not self.requires_grad:
            return
        if grad.shape != self.data.shape:
            raise ShapeMismatch("gradient shape differs from value shape", self.data.shape, grad.shape)
        if self.grad is None:
            self.grad = np.array(grad, dtype=self.data.dtype, copy=True)
        else:
            self.grad += grad

    def backward(self) -> None:
        """Back-propagate from this scalar through the whole graph.

        Raises:
            UnsupportedComposition: If this tensor is not a scalar.
        """
        if self.data.size != 1:
            raise UnsupportedComposition(f"backward() needs a scalar, got shape {self.shape}")

        order = []
        visited = set()
        stack = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            if id(node) in visited:
                continue
            visited.add(id(node))
            stack.append((node, True))
            for parent in node._parents:
                if id(parent) not in visited:
                    stack.append((parent, False))

        self.grad = np.ones_like(self.data)
        for node in reversed(order):
            if node.grad is not None:
                node._backward()


def as_tensor(value: Union[Tensor, ArrayLike]) -> Tensor:
    """Wrap constants; tensors pass through unchanged."""
    return value if isinstance(value, Tensor) else Tensor(value)


def _unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    """Sum a broadcast gradient back down to an operand's shape."""
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def add(a: Tensor, b: Tensor) -> Tensor:
    """Elementwise sum with numpy broadcasting (bias add, residual add)."""
    a, b = as_tensor(a), as_tensor(b)
    out = Tensor(a.data + b.data, _parents=(a, b), op="add")

    def _backward():
        a.accumulate(_unbroadcast(out.grad, a.shape))
        b.accumulate(_unbroadcast(out.grad, b.shape))

    out._backward = _backward
    return out


def mul(a: Tensor, b: Tensor) -> Tensor:
    """Elementwise product with broadcasting."""
    a, b = as_tensor(a), as_tensor(b)
    out = Tensor(a.data * b.data, _parents=(a, b), op="mul")

    def _backward():
        a.accumulate(_unbroadcast(out.grad * b.data, a.shape))
        b.accumulate(_unbroadcast(out.grad * a.data, b.shape))

    out._backward = _backward
    return out


def scale(a: Tensor, factor: float) -> Tensor:
    """Multiply by a constant."""
    out = Tensor(a.data * factor, _parents=(a,), op="scale")

    def _backward():
        a.accumulate(out.grad * factor)

    out._backward = _backward
    return out


def matmul(x: Tensor, w: Tensor) -> Tensor:
    """x @ w for x of shape (..., k) and a 2-D weight w of shape (k, n)."""
    x, w = as_tensor(x), as_tensor(w)
    if w.data.ndim != 2 or x.shape[-1] != w.shape[0]:
        raise ShapeMismatch("matmul operands do not align", (x.shape[-1], -1), w.shape)
    out = Tensor(x.data @ w.data, _parents=(x, w), op="matmul")

    def _backward():
        x.accumulate(out.grad @ w.data.T)
        flat_x = x.data.reshape(-1, w.shape[0])
        flat_g = out.grad.reshape(-1, w.shape[1])
        w.accumulate(flat_x.T @ flat_g)

    out._backward = _backward
    return out


def _stable_sigmoid(x: np.ndarray) -> np.ndarray:
    return np.exp(-np.logaddexp(0, -x)).astype(x.dtype, copy=False)


def sigmoid(a: Tensor) -> Tensor:
    """Logistic function, values in (0, 1)."""
    s = _stable_sigmoid(a.data)
    out = Tensor(s, _parents=(a,), op="sigmoid")

    def _backward():
        a.accumulate(out.grad * s * (1 - s))

    out._backward = _backward
    return out


def softmax(a: Tensor, axis: int = -1) -> Tensor:
    """Softmax along an axis; slices along it sum to 1."""
    shifted = a.data - a.data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    s = e / e.sum(axis=axis, keepdims=True)
    out = Tensor(s, _parents=(a,), op="softmax")

    def _backward():
        inner = (out.grad * s).sum(axis=axis, keepdims=True)
        a.accumulate(s * (out.grad - inner))

    out._backward = _backward
    return out


def exp(a: Tensor) -> Tensor:
    """Elementwise exponential."""
    e = np.exp(a.data)
    out = Tensor(e, _parents=(a,), op="exp")

    def _backward():
        a.accumulate(out.grad * e)

    out._backward = _backward
    return out


def mean(a: Tensor, axis: int) -> Tensor:
    """Mean over one axis (average pooling when the axis is positions)."""
    count = a.shape[axis]
    out = Tensor(a.data.mean(axis=axis), _parents=(a,), op="mean")

    def _backward():
        g = np.expand_dims(out.grad, axis) / count
        a.accumulate(np.broadcast_to(g, a.shape).astype(a.dtype))

    out._backward = _backward
    return out


def total(a: Tensor) -> Tensor:
    """Sum of every element, as a scalar."""
    out = Tensor(a.data.sum(), _parents=(a,), op="total")

    def _backward():
        a.accumulate(np.full(a.shape, out.grad, dtype=a.dtype))

    out._backward = _backward
    return out


def reshape(a: Tensor, shape: Sequence[int]) -> Tensor:
    """View with a new shape."""
    out = Tensor(a.data.reshape(shape), _parents=(a,), op="reshape")

    def _backward():
        a.accumulate(out.grad.reshape(a.shape))

    out._backward = _backward
    return out


def split_last(a: Tensor, index: int) -> Tuple[Tensor, Tensor]:
    """Split the last axis into [:index] and [index:]."""
    first = Tensor(a.data[..., :index], _parents=(a,), op="split")
    second = Tensor(a.data[..., index:], _parents=(a,), op="split")

    def _backward_first():
        g = np.zeros_like(a.data)
        g[..., :index] = first.grad
        a.accumulate(g)

    def _backward_second():
        g = np.zeros_like(a.data)
        g[..., index:] = second.grad
        a.accumulate(g)

    first._backward = _backward_first
    second._backward = _backward_second
    return first, second


def conv1d_same(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
    """Width-3, stride-1 convolution along positions with one zero pad each side.

    Args:
        x: (batch, positions, in_channels).
        w: (3 * in_channels, out_channels); rows are [left tap, centre tap,
            right tap], each block covering all input channels.
        b: (out_channels,) bias.

    Returns:
        (batch, positions, out_channels).
    """
    x, w, b = as_tensor(x), as_tensor(w), as_tensor(b)
    if x.data.ndim != 3:
        raise ShapeMismatch("conv1d input must be (batch, positions, channels)", (-1, -1, -1), x.shape)
    batch, positions, channels = x.shape
    if w.shape[0] != 3 * channels or b.shape != (w.shape[1],):
        raise ShapeMismatch("conv1d kernel does not match input channels", (3 * channels, -1), w.shape)

    padded = np.pad(x.data, ((0, 0), (1, 1), (0, 0)))
    cols = np.concatenate([padded[:, t:t + positions] for t in range(3)], axis=-1)
    out = Tensor(cols @ w.data + b.data, _parents=(x, w, b), op="conv1d")

    def _backward():
        g = out.grad
        w.accumulate(cols.reshape(-1, 3 * channels).T @ g.reshape(-1, w.shape[1]))
        b.accumulate(g.sum(axis=(0, 1)))
        dcols = g @ w.data.T
        dpadded = np.zeros_like(padded)
        for t in range(3):
            dpadded[:, t:t + positions] += dcols[..., t * channels:(t + 1) * channels]
        x.accumulate(dpadded[:, 1:positions + 1])

    out._backward = _backward
    return out
