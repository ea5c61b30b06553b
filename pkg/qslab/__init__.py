__package__ = 'qslab'
__version__ = '0.1.0'
__licence__ = 'LGPL3'
__author__ = 'qslab contributors'
__description__ = 'Queuesort preimage laboratory: exact enumeration and verification'
