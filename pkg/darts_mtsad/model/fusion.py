# -*- coding: utf-8 -*-
"""
Window-aware soft fusion of the two paths and next-window prediction.

Example:
    >>> fusion = SoftFusion(params, arch, rng)
    >>> short, context = fusion.align(h1, h2)      # B x w x N x d, B x T x N x d
    >>> fused, weights = fusion.cross_attend(short, context)
    >>> fusion.predict(fused).shape()
    (2, 30, 5, 1)
"""
import numpy as np

from darts_mtsad.model.norm import EPSILON, feature_norm
from darts_mtsad.result.errors import DimensionError
from darts_mtsad.result.optional import Empty, Some
from darts_mtsad.tensor import ops


class SoftFusion:
    """
    Per-channel cross-attention from window steps to history windows.

    Queries come from the short-term tokens of one channel, keys and
    values from the same channel's context tokens; the softmax runs over
    the T context windows.

    Example:
        >>> fused, weights = fusion.cross_attend(short, context)
        >>> weights.map(lambda w: w.shape()).otherwise(None)
        (2, 5, 30, 10)
    """

    def __init__(self, params, arch, rng, prefix="fusion"):
        """
        Create a SoftFusion and register its parameters.

        Args:
            params: ParameterSet
            arch: Architecture
            rng: numpy.random.Generator for initialization
            prefix: Parameter name prefix
        """
        d = arch.latent()
        key = arch.key_dim()
        w = arch.window()
        self._arch = arch
        self._short_alpha = params.ones(prefix + ".norm.short.alpha", (d,))
        self._short_beta = params.zeros(prefix + ".norm.short.beta", (d,))
        self._long_alpha = params.ones(prefix + ".norm.long.alpha", (d,))
        self._long_beta = params.zeros(prefix + ".norm.long.beta", (d,))
        self._query = params.glorot(prefix + ".query", (d, key), rng)
        self._key = params.glorot(prefix + ".key", (d, key), rng)
        self._value = params.glorot(prefix + ".value", (d, d), rng)
        self._out = params.glorot(prefix + ".out.weight", (w * d, w), rng)
        self._out_bias = params.zeros(prefix + ".out.bias", (w,))

    def align(self, short, context):
        """
        Normalize both embeddings and move time to the second axis.

        Args:
            short: Tensor B x N x d x w
            context: Tensor B x N x d x T, or None without the long path

        Returns:
            Tuple (Tensor B x w x N x d, Tensor B x T x N x d or None)

        Raises:
            DimensionError: If N or d differ between the paths
        """
        literal = self._arch.literal_norm()
        first = feature_norm(
            short.transpose(0, 3, 1, 2), self._short_alpha, self._short_beta, EPSILON, literal
        )
        if context is None:
            return first, None
        if short.shape()[:3] != context.shape()[:3]:
            raise DimensionError(
                "Path embeddings disagree on batch, channels or features",
                {"short": short.shape(), "long": context.shape()}
            )
        second = feature_norm(
            context.transpose(0, 3, 1, 2), self._long_alpha, self._long_beta, EPSILON, literal
        )
        return first, second

    def cross_attend(self, short, context):
        """
        Attend every window step to the history windows of its channel.

        Without context or with the attention ablation, the fused features
        are the value projection of the short-term tokens.

        Args:
            short: Tensor B x w x N x d
            context: Tensor B x T x N x d, or None

        Returns:
            Tuple (Tensor B x w x N x d, Optional[Tensor B x N x w x T] weights)
        """
        if context is None or self._arch.disable_fusion_attention():
            return short @ self._value, Empty()
        queries = (short @ self._query).transpose(0, 2, 1, 3)
        keys = (context @ self._key).transpose(0, 2, 1, 3)
        values = (context @ self._value).transpose(0, 2, 1, 3)
        scores = (queries @ keys.transpose(0, 1, 3, 2)) / np.sqrt(self._arch.key_dim())
        weights = ops.softmax_rows(scores)
        fused = (weights @ values).transpose(0, 2, 1, 3)
        return fused, Some(weights)

    def predict(self, fused):
        """
        Project the concatenated window features to next-window values.

        Args:
            fused: Tensor B x w x N x d

        Returns:
            Tensor B x w x N x 1
        """
        b, w, n, d = fused.shape()
        flat = fused.transpose(0, 2, 1, 3).reshape(b, n, w * d)
        out = flat @ self._out + self._out_bias
        return out.transpose(0, 2, 1).reshape(b, w, n, 1)
