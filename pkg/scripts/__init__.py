# Path: scripts/__init__.py
# Purpose: Package initializer for command-line entry points.
# Layer: scripts.
# Details: Hosts the cicert CLI installed as a console script.
