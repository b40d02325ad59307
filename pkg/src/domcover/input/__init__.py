"""Readers and writers for the flat files the command-line runner accepts."""
