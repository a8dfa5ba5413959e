"""Tests for the bugyi.certidom package."""
