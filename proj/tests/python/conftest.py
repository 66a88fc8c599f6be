# Under ctest, import the module from the build tree even if an installed copy exists
# (an editable install's import hook would otherwise take precedence).
import importlib.machinery
import importlib.util
import os
import sys

_tree = os.environ.get("SYMCONE_PYTHON_TREE")
if _tree:
    pkg = os.path.join(_tree, "symcone")
    for name, where in (("symcone._core", pkg), ("symcone", _tree)):
        spec = importlib.machinery.PathFinder.find_spec(name, [where])
        if spec is None:
            raise ImportError(f"{name} not built under {_tree}")
        module = importlib.util.module_from_spec(spec)
        sys.modules[name] = module
        spec.loader.exec_module(module)
    sys.modules["symcone"]._core = sys.modules["symcone._core"]
