# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, mahlerq developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


from .version import __version__, __version_info__

__all__ = ['__version__', '__version_info__']
