import sys

from twostep.cli.commands import build_parser, run_command


def get_parser():
    return build_parser()


def launch_mode(argv=None):
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


def main():
    sys.exit(launch_mode())


if __name__ == "__main__":
    main()
