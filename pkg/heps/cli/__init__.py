from heps.cli.main import build_cli, main

__all__ = ["build_cli", "main"]
