#!/usr/bin/env python3
"""Output formatters for marc-rlnc"""
