from ._application import Application


def main() -> int:
    application = Application()
    return application.run()


if __name__ == "__main__":
    raise SystemExit(main())
