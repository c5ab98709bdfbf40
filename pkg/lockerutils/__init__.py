from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version('lockerutils')
except PackageNotFoundError:
    # source tree that was not installed
    __version__ = 'unknown'
