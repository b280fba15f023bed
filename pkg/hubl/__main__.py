#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys

from .cli.main import main

sys.exit(main())
