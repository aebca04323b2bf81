import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))

# build-tree extension module (_lpkern.so) and the source wrapper package
module_dir = os.environ.get("LPKERN_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)
sys.path.insert(0, os.path.join(HERE, "..", "..", "python"))
