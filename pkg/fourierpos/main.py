import sys
from pathlib import Path

from fourierpos.errors import EXIT_OK, UsageError, exit_code_for
from fourierpos.harness import COMMANDS
from fourierpos.utils import logger, options, seed_everything


def main(argv=None):
    try:
        command, args = options.get_config(argv)
    except UsageError as e:
        logger.get_logger().error("usage:", e)
        return exit_code_for(e)

    logger.basic_config(Path(args.out_dir) / "main.log")
    log = logger.get_logger()
    seed_everything(int(args.get("seed") or 0))

    log.info("fourierpos {} -> {}".format(command, args.out_dir))
    try:
        COMMANDS[command](args)
    except Exception as e:
        # anything outside the FourierPosError/OSError families is re-raised as a bug
        code = exit_code_for(e)
        log.error("{}: {}".format(type(e).__name__, e))
        return code
    finally:
        log.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
