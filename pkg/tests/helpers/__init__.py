"""Shared test helpers: independent oracles, seeded generators, config files."""
