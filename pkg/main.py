from scripts.cli import main

# python main.py present --group torus -n 5 --format json
if __name__ == '__main__':
    raise SystemExit(main())
