"""HTTP surface of the lab."""
