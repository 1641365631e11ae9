"""Logarithmic Hessian toolkit: exact torus reduction of Laurent polynomials"""
