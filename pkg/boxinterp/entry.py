from boxinterp.cli import cli
from boxinterp import processors

__all__ = ['cli', 'processors']


if __name__ == '__main__':
    cli()
