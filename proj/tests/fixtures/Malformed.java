class { {
