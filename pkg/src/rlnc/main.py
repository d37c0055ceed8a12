#!/usr/bin/env python

from zenlib.util import get_args_n_logger, get_kwargs_from_args

from rlnc.netcode_runner import NetcodeRunner

from . import RankShortfallError, WireFormatError

COMMANDS = ["encode", "decode", "sim", "bench", "table"]

EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_SHORTFALL = 3
EXIT_FORMAT = 4


def main():
    arguments = [
        {"flags": ["command"], "action": "store", "choices": COMMANDS, "help": "the command to run"},
        {
            "flags": ["input"],
            "action": "store",
            "nargs": "?",
            "help": "the file to encode, or the container to decode",
        },
        {"flags": ["-c", "--config"], "action": "store", "help": "set the config file location"},
        {
            "flags": ["--field-bits"],
            "action": "store",
            "type": int,
            "choices": [1, 2, 4, 8, 16],
            "help": "symbol width s, coding is done in GF(2^s)",
        },
        {"flags": ["--packets"], "action": "store", "type": int, "help": "generation size, the number of original packets"},
        {"flags": ["--redundancy"], "action": "store", "type": int, "help": "coded packets emitted per source"},
        {"flags": ["--seed"], "action": "store", "type": int, "help": "seed for every random draw"},
        {"flags": ["--coding"], "action": "store", "choices": ["on", "off"], "help": "enable or disable network coding"},
        {"flags": ["--slots"], "action": "store", "type": int, "help": "the number of time slots to simulate"},
        {
            "flags": ["--scenario"],
            "action": "store",
            "choices": ["butterfly", "relay", "point"],
            "help": "the topology to simulate",
        },
        {"flags": ["--loss"], "action": "store", "type": float, "help": "loss probability applied to every link"},
        {
            "flags": ["--payload-symbols"],
            "action": "store",
            "type": int,
            "help": "symbols per simulated packet",
        },
        {
            "flags": ["--polynomial"],
            "action": "store",
            "type": lambda value: int(value, 0),
            "help": "reduced polynomial without the degree s term, such as 0x1b",
        },
        {"flags": ["--table"], "action": "store_true", "help": "use multiplication tables", "dest": "table_mode"},
        {
            "flags": ["--no-table"],
            "action": "store_false",
            "help": "use on-the-fly arithmetic",
            "dest": "table_mode",
        },
        {"flags": ["--op"], "action": "store", "choices": ["add", "mul", "div", "inv"], "help": "operation to benchmark"},
        {"flags": ["--iterations"], "action": "store", "type": int, "help": "operations timed per benchmark run"},
        {"flags": ["--row"], "action": "store", "type": int, "help": "print a single multiplication table row"},
        {"flags": ["-o", "--output"], "action": "store", "help": "set the output file or directory"},
        {"flags": ["--print-config"], "action": "store_true", "help": "print the final config dict"},
    ]

    args, logger = get_args_n_logger(
        package=__package__,
        description="Random linear network coding toolkit",
        arguments=arguments,
        drop_default=True,
        strict=True,
    )
    kwargs = get_kwargs_from_args(args, logger=logger)
    command = kwargs.pop("command")
    kwargs.pop("print_config", None)  # This is not a valid kwarg for NetcodeRunner

    logger.debug(f"Using the following kwargs: {kwargs}")
    runner = None
    try:
        runner = NetcodeRunner(**kwargs)
        output = runner.run(command)
    except RankShortfallError as e:
        logger.error(e)
        logger.debug(e, exc_info=True)
        exit(EXIT_SHORTFALL)
    except WireFormatError as e:
        logger.error("Invalid container: %s" % e)
        logger.debug(e, exc_info=True)
        exit(EXIT_FORMAT)
    except ValueError as e:
        logger.error(e)
        logger.debug(e, exc_info=True)
        if runner:
            logger.info("Dumping config dict:\n%s" % runner.config_dict)
        exit(EXIT_USAGE)
    except Exception as e:
        logger.error(e, exc_info=True)
        exit(EXIT_ERROR)

    if isinstance(output, list):
        print("\n".join(output))

    if "print_config" in args and args.print_config:
        print(runner.config_dict)


if __name__ == "__main__":
    main()
