"""Command-line front end (``charone``)."""
