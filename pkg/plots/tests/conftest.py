import importlib.util

# the core suite must run even when the plots package is not installed
collect_ignore = []
if importlib.util.find_spec("dclplots") is None:
    collect_ignore = ["test_plots.py"]
