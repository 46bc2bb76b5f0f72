"""Recognition of complete edge-colored permutation graphs.

Pure library layer: nothing in this package imports Django, so it can be used
from the management command, the HTTP views and plain scripts alike.
"""
