#!/usr/bin/env python
# -*- coding: utf-8 -*-

version = '0.4.0'
