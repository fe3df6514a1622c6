#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""
This module contains the console used to print diagnostics.

On a terminal, or when writing to stderr for the command line, messages are styled by rich.
Anywhere else they are printed as plain text with the markup removed.
"""

import re
import sys
from typing import Literal

import rich.console as console
from rich.text import Text

from planarrecolor.utils import is_interactive

MsgLvl = Literal["info", "success", "warning", "error"]
LEVEL_STYLE = {"info": "", "success": "green", "warning": "orange3", "error": "bold red3"}
MARKUP = re.compile(r"\[[^\]]+\]")


class Console:
    """Diagnostics printer.

    The command line builds it with stderr=True, leaving stdout to the JSON results.
    """

    def __init__(self, verbose: bool = True, *, stderr: bool = False):
        self.verbose = verbose
        self.stderr = stderr
        self.rich = console.Console(stderr=stderr, highlight=False) if (stderr or is_interactive()) else None

    @property
    def stream(self):
        return sys.stderr if self.stderr else sys.stdout

    def message(self, msg: str, *, lvl: MsgLvl = "info"):
        if not self.verbose:
            return
        if self.rich is None:
            print(msg, file=self.stream)
        else:
            self.rich.print(Text(msg, style=LEVEL_STYLE[lvl]))

    def success(self, msg: str):
        self.message(msg, lvl="success")

    def warn(self, msg: str):
        self.message(msg, lvl="warning")

    def error(self, msg: str):
        self.message(msg, lvl="error")

    def report(self, report):
        """Prints any report object exposing a level."""
        self.message(repr(report), lvl=report.level)

    def print(self, renderable):
        """Prints rich markup or a renderable such as a Table."""
        if not self.verbose:
            return
        if self.rich is None:
            print(MARKUP.sub("", str(renderable)), file=self.stream)
        else:
            self.rich.print(renderable)
