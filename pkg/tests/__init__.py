import warnings

# Numeric warnings (overflow, invalid value, divide by zero) signal a bug
# in the statistics, so fail the test instead.
warnings.filterwarnings('error', category=RuntimeWarning)
