namespace rittkit {}
