# Tests package for efountain
