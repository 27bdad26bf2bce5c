__version__ = "0.3.0"
version = f'transseries {__version__}'
