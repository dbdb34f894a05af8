"""Allow ``python -m chebpsi``."""
from chebpsi.cli import main

main()
