"""Run the tomopt CLI from a source checkout without installing."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tomopt.cli.tomopt_cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
