from libkovalevskaya.fields.base_field import ScalarField


class LambdaField(ScalarField):
    """
    Wraps a plain callable ``fn(coords, spec)`` so that it can be passed wherever a scalar
    field is expected.

    Args:
        fn: Callable mapping a ``Tensor`` of shape [..., 6] and a ``PencilSpec`` to values
        gradient_fn: Optional callable with the same signature returning gradients of shape
            [..., 6]. Automatic differentiation is used when omitted.
        name: Optional name used in ``repr``
    """

    def __init__(self, fn, gradient_fn=None, name=None):
        self.fn = fn
        self.gradient_fn = gradient_fn
        self.name = name or getattr(fn, '__name__', 'lambda')

    def call(self, coords, spec):
        return self.fn(coords, spec)

    def gradient(self, coords, spec):
        if self.gradient_fn is None:
            return super(LambdaField, self).gradient(coords, spec)
        return self.gradient_fn(coords, spec)

    def get_config(self):
        return dict(name=self.name)


def as_field(f):
    if isinstance(f, ScalarField):
        return f
    if callable(f):
        return LambdaField(f)
    raise TypeError("Expected a ScalarField or a callable, got {}".format(type(f).__name__))
