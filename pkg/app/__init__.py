# Gradual Algebra
