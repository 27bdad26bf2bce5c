# Copyright (c) 2017, Neil Booth
# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Class for environment configuration and defaults.'''


from os import environ

from transseries.lib.util import class_logger


class EnvBase:
    '''Wraps environment configuration.'''

    class Error(Exception):
        pass

    def __init__(self):
        self.logger = class_logger(__name__, self.__class__.__name__)

    @classmethod
    def default(cls, envvar, default):
        return environ.get(envvar, default)

    @classmethod
    def integer(cls, envvar, default, *, minimum=None):
        value = environ.get(envvar)
        if value is None:
            return default
        try:
            result = int(value)
        except Exception:
            raise cls.Error(f'cannot convert envvar {envvar} value {value} to '
                            f'an integer') from None
        if minimum is not None and result < minimum:
            raise cls.Error(f'envvar {envvar} must be at least {minimum:,d}')
        return result

    @classmethod
    def custom(cls, envvar, default, parse):
        value = environ.get(envvar)
        if value is None:
            return default
        try:
            return parse(value)
        except Exception as e:
            raise cls.Error(
                f'cannot parse envvar {envvar} value {value}'
            ) from e
