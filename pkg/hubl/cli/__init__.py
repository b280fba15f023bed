#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Command-line interface '''
