# polar_gauge/__main__.py

from polar_gauge.cli import main

if __name__ == "__main__":
    main()
