# -*- coding: utf-8 -*-
"""
Dual-path anomaly detector for high-dimensional multivariate time series.

Trains on normal data, scores test streams and evaluates detections
with point adjustment.
"""

__version__ = "1.0.0"
