"""Vectorial hyper-bent functions of the PS_ap^# class over GF(2^(2m))."""
