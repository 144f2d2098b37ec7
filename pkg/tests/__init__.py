# -*- coding: utf-8 -*-
"""
Test suite for the darts_mtsad detector.
"""
