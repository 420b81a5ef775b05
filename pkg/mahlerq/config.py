# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import bespon
import pathlib
import textwrap
import warnings
from typing import Optional
from .err import MahlerError




def _unit_interval_float(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and 0 < x < 1


def _positive_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 1


class Config(dict):
    '''
    Dict-like configuration that raises an error when invalid keys are set.
    If `.load()` is invoked, a config file in BespON format is loaded if it
    exists, and otherwise is created if possible.

    Tolerances are absolute.  Command-line flags override values from the
    config file, which in turn override the defaults.
    '''
    def __init__(self, *args, **kwargs):
        self.loaded_config_file = False
        self.config_path = self._config_path
        self.update(self._defaults)
        self.update(dict(*args, **kwargs))

    _defaults = {
        'quad_tol': 1e-11,
        'series_tol': 1e-15,
        'lvalue_tol': 1e-12,
        'q_terms': 400,
        'curve_table': '',
        'workers': 1,
        'max_den': 60,
    }
    _key_check = {
        'quad_tol': _unit_interval_float,
        'series_tol': _unit_interval_float,
        'lvalue_tol': _unit_interval_float,
        'q_terms': lambda x: _positive_int(x) and x >= 20,
        'curve_table': lambda x: isinstance(x, str),
        'workers': _positive_int,
        'max_den': _positive_int,
    }
    _config_path = pathlib.Path('~/.mahlerq.bespon').expanduser()

    def __setitem__(self, key, value):
        if key not in self._key_check:
            raise MahlerError(f'Invalid configuration option "{key}"')
        if not self._key_check[key](value):
            raise MahlerError(f'Configuration option "{key}" has invalid value "{value}"')
        super().__setitem__(key, value)


    def update(self, other: dict):
        '''
        Send all keys through __setitem__ so that they are checked for
        validity.
        '''
        for k, v in other.items():
            self[k] = v


    def __missing__(self, key):
        if self.loaded_config_file:
            raise MahlerError(textwrap.dedent(f'''\
                Configuration option "{key}" has not been set.
                Open "{self.config_path}" to edit config manually.
                '''))
        raise MahlerError(f'Configuration option "{key}" has not been set.')


    _default_config_template = textwrap.dedent('''\
        # mahlerq configuration.  Uncomment a line to override the default.

        # Absolute tolerance for one-dimensional quadrature.
        # quad_tol = 1e-11

        # Truncation tolerance for hypergeometric series.
        # series_tol = 1e-15

        # Truncation tolerance for the L-series of elliptic curves.
        # lvalue_tol = 1e-12

        # Number of q-expansion terms used in modular checks.
        # q_terms = 400

        # Curve table replacing the packaged one (empty string = packaged).
        # curve_table = ""

        # Worker processes for scans and table rows.
        # workers = 1

        # Largest denominator tried when recognizing rational ratios.
        # max_den = 60
        ''')

    def load(self, config_path: Optional[pathlib.Path]=None):
        '''
        Load config file.  `config_path` replaces the per-user default, which
        is mostly useful for tests and for project-local settings.
        '''
        if config_path is not None:
            self.config_path = pathlib.Path(config_path).expanduser()
        config_path = self.config_path
        config_text = None
        try:
            config_text = config_path.read_text('utf8')
            self.loaded_config_file = True
        except FileNotFoundError:
            try:
                config_path.write_text(self._default_config_template, encoding='utf8')
            except FileNotFoundError:
                warnings.warn(f'Could not create default mahlerq config file "{config_path}" due to FileNotFoundError (directory does not exist).')
            except PermissionError:
                warnings.warn(f'Could not create default mahlerq config file "{config_path}" due to PermissionError.')
        except PermissionError:
            raise MahlerError(f'Could not open mahlerq config file "{config_path}" due to PermissionError.')
        except UnicodeDecodeError:
            raise MahlerError(f'Could not open mahlerq config file "{config_path}" due to UnicodeDecodeError. File may be corrupt.')

        if config_text is not None:
            try:
                config_dict = bespon.loads(config_text, empty_default=dict)
            except Exception as e:
                raise MahlerError(f'Failed to load config file "{config_path}":\n{e}')
            try:
                self.update(config_dict)
            except MahlerError as e:
                raise MahlerError(f'Failed to load config file "{config_path}":\n{e}')

    def save(self):
        '''
        Save config file.
        '''
        config_path = self.config_path
        try:
            bespon_text = bespon.dumps(dict(self))
        except Exception as e:
            raise MahlerError(f'Failed to convert config data to config file format (invalid data?):\n{e}')
        try:
            config_path.write_text(bespon_text, 'utf8')
        except FileNotFoundError:
            raise MahlerError(f'Could not create mahlerq config file "{config_path}" due to FileNotFoundError (directory does not exist).')
        except PermissionError:
            raise MahlerError(f'Could not create mahlerq config file "{config_path}" due to PermissionError.')

    def override(self, **options):
        '''
        Apply command-line overrides, skipping options that were not given.
        '''
        self.update({k: v for k, v in options.items() if v is not None})
