"""Tests for cubic-composition."""
