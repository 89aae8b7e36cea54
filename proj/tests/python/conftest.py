import os
import sys

# The built extension directory and the pure-python package directory are
# provided by ctest; fall back to an installed package when absent.
for var in ("SMOOTHRED_PKG_DIR", "SMOOTHRED_EXT_DIR"):
    d = os.environ.get(var)
    if d and d not in sys.path:
        sys.path.insert(0, d)

ext_dir = os.environ.get("SMOOTHRED_EXT_DIR")
pkg_dir = os.environ.get("SMOOTHRED_PKG_DIR")
if ext_dir and pkg_dir:
    # Make `smoothred._core` resolve against the freshly built extension.
    pkg = os.path.join(pkg_dir, "smoothred")
    import importlib.util

    ext = next(
        (f for f in os.listdir(ext_dir) if f.startswith("_core") and f.endswith(".so")), None
    )
    if ext:
        spec = importlib.util.spec_from_file_location(
            "smoothred._core", os.path.join(ext_dir, ext)
        )
        module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(module)
        sys.modules["smoothred._core"] = module
