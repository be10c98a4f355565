# PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
# Copyright (C) 2026  The PyHetSpec developers  (GNU GPLv3)
"""Define metadata about the PyHetSpec package."""

version = "0.4.0"
authorlist = [
    "The PyHetSpec developers",
]
authors = " and ".join(authorlist)


def say_hello():
    print(
        """
                        The PyHetSpec developers

                             ~~~ present ~~~

     PyHetSpec: heterodyne spectrometer sensitivity limits in Python.
                              Version {}


        LO ~~~~~~~~~~\\
                      >==[ 50/50 ]==( PD+ )--\\
        in ~~~~~~~~~~/              ( PD- )--( - )--[ G ]--[ ESA @ 6 MHz ]


          one detected photon per spectral-temporal mode, and no fewer
""".format(
            version
        )
    )
