# -*- coding: utf-8 -*-
"""
Architecture hyperparameters of the dual-path detector.

Example:
    >>> arch = Architecture(channels=51)
    >>> arch.pooled(), arch.key_dim()
    (10, 64)
    >>> Architecture.of(arch.json()) == arch
    True
"""
import numpy as np

from darts_mtsad.result.errors import ConfigurationError, ParameterError


FUSION_MODES = ("sum", "concat")
ISOLATED_ROWS = ("identity", "zero")
KL_FORMS = ("bernoulli", "paper", "edge")
PRECISIONS = {"float32": np.float32, "float64": np.float64}


class Architecture:
    """
    Immutable model shape and switches.

    Every argument has the published default; ``key_dim`` of None means
    the latent dimension.

    Example:
        >>> Architecture(channels=4, window=6, history=24, latent=8, heads=2).priors()
        (0.9, 0.05)
    """

    FIELDS = (
        "channels", "window", "history", "latent", "heads", "head_dim",
        "priors", "temperature", "hard_sampling", "diffusion_steps",
        "bidirectional", "isolated_rows", "receptive_fields", "decay",
        "key_dim", "fusion_mode", "literal_norm", "disable_lsgm",
        "disable_fusion_attention", "kl_form", "precision",
    )

    def __init__(self, channels, window=30, history=300, latent=64, heads=3,
                 head_dim=64, priors=(0.9, 0.05, 0.05), temperature=0.5,
                 hard_sampling=True, diffusion_steps=2, bidirectional=False,
                 isolated_rows="identity", receptive_fields=2, decay=0.7,
                 key_dim=None, fusion_mode="sum", literal_norm=False,
                 disable_lsgm=False, disable_fusion_attention=False,
                 kl_form="bernoulli", precision="float32"):
        """
        Create an Architecture.

        Args:
            channels: Channel count N
            window: Short window w
            history: History length h, a multiple of w
            latent: Latent dimension d
            heads: Graph learner heads H
            head_dim: Per-head scorer dimension
            priors: H Bernoulli edge priors in (0, 1); the leading entries
                are used when fewer heads than priors are configured
            temperature: Gumbel-Softmax temperature
            hard_sampling: Straight-through hard samples while training
            diffusion_steps: Diffusion order K
            bidirectional: Add reverse random-walk supports
            isolated_rows: Propagation of zero-degree rows, identity or zero
            receptive_fields: Affinity powers R
            decay: Temporal decay factor in [0, 1]
            key_dim: Fusion key dimension, None for d
            fusion_mode: sum or concat over receptive fields
            literal_norm: Use the literal normalization formula
            disable_lsgm: Drop the long-term path
            disable_fusion_attention: Replace cross-attention by the value projection
            kl_form: bernoulli or paper (edge is an alias of paper)
            precision: float32 or float64

        Raises:
            ConfigurationError: If a field is out of range
            ParameterError: If a prior or the decay is out of range
        """
        priors = tuple(float(p) for p in priors)
        if len(priors) < heads:
            raise ConfigurationError(
                "Fewer priors than heads", {"priors": len(priors), "heads": heads}
            )
        priors = priors[:heads]
        for name, value in (("channels", channels), ("window", window),
                            ("history", history), ("latent", latent),
                            ("heads", heads), ("head_dim", head_dim),
                            ("receptive_fields", receptive_fields)):
            if int(value) != value or value < 1:
                raise ConfigurationError("Must be a positive integer", {name: value})
        if diffusion_steps < 0 or int(diffusion_steps) != diffusion_steps:
            raise ConfigurationError(
                "Diffusion steps must be a non-negative integer",
                {"diffusion_steps": diffusion_steps}
            )
        if history % window:
            raise ConfigurationError(
                "History must be a multiple of the window",
                {"history": history, "window": window}
            )
        if not all(0 < p < 1 for p in priors):
            raise ParameterError("Edge priors must lie in (0, 1)", {"priors": list(priors)})
        if not 0 <= decay <= 1:
            raise ParameterError("Decay must lie in [0, 1]", {"decay": decay})
        if not temperature > 0:
            raise ParameterError("Temperature must be positive", {"temperature": temperature})
        if key_dim is not None and (int(key_dim) != key_dim or key_dim < 1):
            raise ConfigurationError("Key dimension must be positive", {"key_dim": key_dim})
        for name, value, allowed in (("fusion_mode", fusion_mode, FUSION_MODES),
                                     ("isolated_rows", isolated_rows, ISOLATED_ROWS),
                                     ("kl_form", kl_form, KL_FORMS),
                                     ("precision", precision, tuple(PRECISIONS))):
            if value not in allowed:
                raise ConfigurationError(
                    "Unsupported value", {name: value, "allowed": list(allowed)}
                )
        self._values = {
            "channels": int(channels), "window": int(window),
            "history": int(history), "latent": int(latent), "heads": int(heads),
            "head_dim": int(head_dim), "priors": priors,
            "temperature": float(temperature), "hard_sampling": bool(hard_sampling),
            "diffusion_steps": int(diffusion_steps),
            "bidirectional": bool(bidirectional), "isolated_rows": isolated_rows,
            "receptive_fields": int(receptive_fields), "decay": float(decay),
            "key_dim": None if key_dim is None else int(key_dim),
            "fusion_mode": fusion_mode, "literal_norm": bool(literal_norm),
            "disable_lsgm": bool(disable_lsgm),
            "disable_fusion_attention": bool(disable_fusion_attention),
            "kl_form": kl_form, "precision": precision,
        }

    @staticmethod
    def of(document):
        """
        Rebuild from a json() document.

        Args:
            document: Dict produced by json()

        Returns:
            Architecture
        """
        fields = dict(document)
        fields["priors"] = tuple(fields.get("priors", (0.9, 0.05, 0.05)))
        return Architecture(**fields)

    def channels(self):
        return self._values["channels"]

    def window(self):
        return self._values["window"]

    def history(self):
        return self._values["history"]

    def pooled(self):
        """
        Get the pooled window count T = h / w.

        Returns:
            Integer T
        """
        return self._values["history"] // self._values["window"]

    def latent(self):
        return self._values["latent"]

    def heads(self):
        return self._values["heads"]

    def head_dim(self):
        return self._values["head_dim"]

    def priors(self):
        return self._values["priors"]

    def temperature(self):
        return self._values["temperature"]

    def hard_sampling(self):
        return self._values["hard_sampling"]

    def diffusion_steps(self):
        return self._values["diffusion_steps"]

    def bidirectional(self):
        return self._values["bidirectional"]

    def isolated_rows(self):
        return self._values["isolated_rows"]

    def receptive_fields(self):
        return self._values["receptive_fields"]

    def decay(self):
        return self._values["decay"]

    def key_dim(self):
        key = self._values["key_dim"]
        return self._values["latent"] if key is None else key

    def fusion_mode(self):
        return self._values["fusion_mode"]

    def literal_norm(self):
        return self._values["literal_norm"]

    def disable_lsgm(self):
        return self._values["disable_lsgm"]

    def disable_fusion_attention(self):
        return self._values["disable_fusion_attention"]

    def kl_form(self):
        return self._values["kl_form"]

    def precision(self):
        return self._values["precision"]

    def dtype(self):
        return PRECISIONS[self._values["precision"]]

    def supports(self):
        """
        Get the number of diffusion supports per order.

        Returns:
            2 when bidirectional, else 1
        """
        return 2 if self._values["bidirectional"] else 1

    def with_changes(self, **changes):
        """
        Copy with some fields replaced.

        Args:
            **changes: Field values to replace

        Returns:
            Architecture
        """
        fields = dict(self._values)
        fields.update(changes)
        return Architecture(**fields)

    def json(self):
        document = dict(self._values)
        document["priors"] = list(document["priors"])
        return document

    def shape_fields(self):
        """
        Fields that decide parameter shapes.

        Returns:
            Dict of the fields a checkpoint must agree on
        """
        keys = ("channels", "window", "history", "latent", "heads", "head_dim",
                "diffusion_steps", "bidirectional", "receptive_fields",
                "key_dim", "fusion_mode", "disable_lsgm")
        fields = {k: self._values[k] for k in keys}
        fields["key_dim"] = self.key_dim()
        return fields

    def __eq__(self, other):
        if not isinstance(other, Architecture):
            return False
        return self._values == other._values

    def __repr__(self):
        return "Architecture(N=%d, w=%d, h=%d, d=%d, heads=%d, K=%d, R=%d)" % (
            self.channels(), self.window(), self.history(), self.latent(),
            self.heads(), self.diffusion_steps(), self.receptive_fields()
        )
