# -*- coding: utf-8 -*-
"""
Z-score reference detector.

Example:
    >>> scores = zscore_scores(standardized_test, start=330)
    >>> scores.global_scores().shape
    (9670,)
"""
import numpy as np

from darts_mtsad.result.errors import ContractError
from darts_mtsad.scoring.scorer import ChannelScores


def zscore_scores(dataset, start=0):
    """
    Score each timestep by the absolute standardized value of each channel.

    Args:
        dataset: TimeSeriesDataset standardized with training statistics
        start: First timestep to score, so spans match the model scores

    Returns:
        ChannelScores, global score is the channel maximum

    Raises:
        ContractError: If the dataset is not standardized or start is past the end
    """
    if not dataset.stats().is_present():
        raise ContractError("Baseline needs a standardized series", {})
    if not 0 <= start < dataset.length():
        raise ContractError(
            "Baseline start outside the series", {"start": start, "length": dataset.length()}
        )
    values = np.abs(dataset.values()[start:])
    return ChannelScores(values, start, values)
