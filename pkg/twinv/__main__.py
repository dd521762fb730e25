# -*- coding: utf-8 -*-
from twinv.cli import main

main()
