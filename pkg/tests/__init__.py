# Tests package for guided-energy-takehome 