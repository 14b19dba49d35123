"""Binary 1-perfect codes, switching, Steiner triple systems and the
Nordstrom-Robinson code, with a certificate checker for switched Hamming
codes that contain no Preparata-parameter code."""

__version__ = "0.1.0"
