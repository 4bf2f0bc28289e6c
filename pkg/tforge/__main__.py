"""Entry point for running as python -m tforge."""

from tforge.cli import app

if __name__ == "__main__":
    app()
