def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: reproduces a published crossover or limit; minutes rather than seconds')
