# -*- coding: utf-8 -*-
"""
Command line application: arguments, configuration, logging, commands
and artifact files.
"""
