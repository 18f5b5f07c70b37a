#!/usr/bin/env python
# -*- coding: utf-8 -*-
# LinePack is a toolkit for finding, certifying and cataloguing
# packings of lines in real and complex projective space.
#
# Copyright (C) 2019-2026 The LinePack Development Team
#
# This file is part of LinePack.
#
# LinePack is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# LinePack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --
"""Rewrite the license header of every Python and reST source from ``HEADER``."""


import os
from fnmatch import fnmatch
from glob import glob


def strip_header(lines, closing):
    """Drop everything up to the header closing line and put a fresh closing line first."""
    for counter, line in enumerate(lines, start=1):
        if line == closing:
            del lines[:counter]
            break
    lines.insert(0, closing)


def fix_python(lines, header_lines):
    do_shebang = lines[0].startswith('#!')
    strip_header(lines, '# --\n')
    for hline in header_lines[::-1]:
        lines.insert(0, ('# ' + hline).rstrip() + '\n')
    lines.insert(0, '# -*- coding: utf-8 -*-\n')
    if do_shebang:
        lines.insert(0, '#!/usr/bin/env python\n')


def fix_rst(lines, header_lines):
    if any('no_update_headers' in line for line in lines):
        return
    strip_header(lines, '    : --\n')
    if len(lines) > 1 and lines[1].strip():
        lines.insert(1, '\n')
    for hline in header_lines[::-1]:
        lines.insert(0, ('    : ' + hline).rstrip() + '\n')
    lines.insert(0, '..\n')


def main():
    source_dirs = ['.', 'doc', 'tools'] + [dn for dn, _, _ in os.walk('linepack')]
    fixers = [('*.py', fix_python), ('*.rst', fix_rst)]

    with open('HEADER') as handle:
        header_lines = handle.readlines()
    # the closing line is written by strip_header
    header_lines = [line for line in header_lines if line.strip() != '--']

    for sdir in source_dirs:
        print('Scanning:', sdir)
        for fn in sorted(glob(os.path.join(sdir, '*.*'))):
            if not os.path.isfile(fn):
                continue
            for pattern, fixer in fixers:
                if fnmatch(fn, pattern):
                    with open(fn) as handle:
                        lines = handle.readlines()
                    if not lines:
                        break
                    print(' Fixing:', fn)
                    fixer(lines, header_lines)
                    with open(fn, 'w') as handle:
                        handle.writelines(lines)
                    break


if __name__ == '__main__':
    main()
