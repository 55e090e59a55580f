"""empty (and it should be for clean namespaces)
"""
