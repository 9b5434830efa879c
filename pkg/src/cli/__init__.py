from src.cli.main import build_parser, run, main

__all__ = ['build_parser', 'run', 'main']
