namespace h0 {}
