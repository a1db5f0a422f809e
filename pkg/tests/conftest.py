import sys
from pathlib import Path

# allow running the tests from a fresh checkout without installation
_src = Path(__file__).resolve().parent.parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
