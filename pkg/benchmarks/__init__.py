"""
Performance benchmarks for liftcount.
"""
