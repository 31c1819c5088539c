# Test files will be added as we implement features
