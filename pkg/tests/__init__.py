# Tests for Gradual Algebra
