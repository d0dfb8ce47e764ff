"""Core - Calcolo esterno invariante, strutture G2, istantoni e risolutori"""
