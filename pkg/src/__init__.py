"""Newsvendor Batch Size - optimal production batch sizes and their Monte Carlo verification"""
