"""Allow running the command line with `python -m equal_biquadrates`."""
from equal_biquadrates.cli import main

main()
