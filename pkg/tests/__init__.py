"""Test suite del progetto"""