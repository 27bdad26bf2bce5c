# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Environment configuration of the shell and the tss command.'''

import logging

from transseries.lib.constants import lookup_field
from transseries.lib.env_base import EnvBase
from transseries.lib.series import Budget, set_default_budget, set_safety_cap


class Env(EnvBase):
    '''Wraps environment configuration.  Command line flags and REPL set
    commands override these values afterwards.'''

    DEFAULT_LOG_FORMAT = '%(levelname)s:%(name)s:%(message)s'

    def __init__(self):
        super().__init__()
        self.budget = self.integer('BUDGET', 64, minimum=1)
        self.display_terms = self.integer('DISPLAY_TERMS', 10, minimum=0)
        self.safety_cap = self.integer('SAFETY_CAP', 200_000, minimum=1)
        self.constant_field = self.custom('CONSTANT_FIELD', lookup_field('rational'),
                                          lookup_field)
        self.log_level = self.custom('LOG_LEVEL', logging.WARNING, self.log_level_number)
        self.log_format = self.default('LOG_FORMAT', self.DEFAULT_LOG_FORMAT)

    @staticmethod
    def log_level_number(name):
        level = logging.getLevelName(name.strip().upper())
        if not isinstance(level, int):
            raise ValueError(f'unknown logging level {name}')
        return level

    def apply(self):
        '''Install the kernel defaults; returns the default Budget.'''
        set_safety_cap(self.safety_cap)
        return set_default_budget(Budget(self.budget))
