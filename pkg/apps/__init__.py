# This makes apps a Python package
