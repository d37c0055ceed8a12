__author__ = "desultory"
__version__ = "1.2.0"

from collections import UserDict
from pathlib import Path
from queue import Queue
from tomllib import TOMLDecodeError, load

from zenlib.logging import loggify
from zenlib.types import NoDupFlatList
from zenlib.util import colorize, handle_plural, pretty_print

PARAMETER_TYPES = {
    "NoDupFlatList": NoDupFlatList,
    "list": list,
    "dict": dict,
    "bool": bool,
    "int": int,
    "float": float,
    "str": str,
    "Path": Path,
}


@loggify
class NetcodeConfigDict(UserDict):
    """
    Dict for rlnc run parameters.

    Parameters must be registered with a type, either in builtin_parameters or by a module's
    'custom_parameters' table. Lists are appended to and dicts updated rather than replaced.

    rlnc.base.base is loaded by default, it pulls in the core defaults and the command modules.

    Values set before their type is known are queued, and processed once the type is registered.
    """

    builtin_parameters = {
        "modules": NoDupFlatList,  # Names of the loaded config modules
        "imports": dict,  # Functions imported from modules, under their respective hooks
        "validated": bool,  # Set once the config has been validated, further changes are refused
        "custom_parameters": dict,  # Parameter types registered by modules
        "custom_processing": dict,  # Processing functions which validate and normalize parameters
        "_processing": dict,  # Queues of values set before their type was known
    }

    def __init__(self, NO_BASE=False, *args, **kwargs):
        super().__init__(*args, **kwargs)
        for parameter, default_type in self.builtin_parameters.items():
            if default_type == NoDupFlatList:
                self.data[parameter] = default_type(no_warn=True, _log_bump=5, logger=self.logger)
            else:
                self.data[parameter] = default_type()
        self["modules"] = "rlnc.base.core" if NO_BASE else "rlnc.base.base"

    def import_args(self, args: dict, quiet=False) -> None:
        """Imports data from an argument dict."""
        log_level = 10 if quiet else 20
        for arg, value in args.items():
            self.logger.log(log_level, "Importing argument '%s' with value: %s" % (arg, value))
            if arg == "modules":
                for module in value.split(","):
                    self[arg] = module
            else:
                self[arg] = value

    def __setitem__(self, key: str, value) -> None:
        if self["validated"]:
            return self.logger.error("[%s] Config is validated, refusing to set value: %s" % (key, colorize(value, "red")))
        if any(key in d for d in (self.builtin_parameters, self["custom_parameters"])):
            return self.handle_parameter(key, value)

        self.logger.debug("[%s] Type not registered yet, queueing value: %s" % (key, value))
        if key not in self["_processing"]:
            self["_processing"][key] = Queue()
        self["_processing"][key].put(value)

    def handle_parameter(self, key: str, value) -> None:
        """
        Sets a registered parameter.
        Custom processing functions are used when defined, otherwise values are
        appended (lists), merged (dicts) or converted to the registered type.
        """
        for d in (self.builtin_parameters, self["custom_parameters"]):
            if expected_type := d.get(key):
                break
        else:
            raise KeyError("Parameter not registered: %s" % key)

        if hasattr(self, f"_process_{key}"):
            self.logger.log(5, "[%s] Using builtin setitem: %s" % (key, f"_process_{key}"))
            return getattr(self, f"_process_{key}")(value)

        if func := self["custom_processing"].get(f"_process_{key}"):
            self.logger.log(5, "[%s] Using custom setitem: %s" % (key, func.__name__))
            return func(self, value)

        if func := self["custom_processing"].get(f"_process_{key}_multi"):
            self.logger.log(5, "[%s] Using custom plural setitem: %s" % (key, func.__name__))
            return handle_plural(func)(self, value)

        if expected_type in (list, NoDupFlatList):
            return self[key].append(value)

        if expected_type is dict:
            if key not in self:
                return super().__setitem__(key, value)
            return self[key].update(value)

        self.logger.debug("Setting parameter '%s' to: %s" % (key, value))
        self.data[key] = expected_type(value)

    @handle_plural
    def _process_custom_parameters(self, parameter_name: str, parameter_type: str) -> None:
        """Registers a parameter type and sets its initial value."""
        if parameter_type not in PARAMETER_TYPES:
            raise ValueError("[%s] Unknown parameter type: %s" % (parameter_name, parameter_type))
        parameter_type = PARAMETER_TYPES[parameter_type]
        self["custom_parameters"][parameter_name] = parameter_type
        self.logger.debug("Registered custom parameter '%s' with type: %s" % (parameter_name, parameter_type))

        match parameter_type.__name__:
            case "NoDupFlatList":
                self.data[parameter_name] = NoDupFlatList(no_warn=True, _log_bump=5, logger=self.logger)
            case "list" | "dict":
                self.data[parameter_name] = parameter_type()
            case "bool":
                self.data[parameter_name] = False
            case "int":
                self.data[parameter_name] = 0
            case "float":
                self.data[parameter_name] = 0.0
            case _:  # str and Path stay unset until configured
                self.data[parameter_name] = None

    def _process_unprocessed(self, parameter_name: str) -> None:
        """Processes queued values for a parameter."""
        if parameter_name not in self["_processing"]:
            return

        value_queue = self["_processing"].pop(parameter_name)
        while not value_queue.empty():
            value = value_queue.get()
            self.logger.debug("[%s] Processing queued value: %s" % (parameter_name, value))
            self[parameter_name] = value

    @handle_plural
    def _process_imports(self, import_type: str, import_value: dict) -> None:
        """Imports the listed functions of each module under the given hook."""
        from importlib import import_module

        for module_name, function_names in import_value.items():
            self.logger.debug("[%s]<%s> Importing module functions: %s" % (module_name, import_type, function_names))
            module = import_module(module_name)
            function_list = [getattr(module, function_name) for function_name in function_names]

            if import_type not in self["imports"]:
                self["imports"][import_type] = NoDupFlatList(_log_bump=10, logger=self.logger)

            if import_type == "commands":
                for function in function_list:
                    if function.__name__ in [f.__name__ for f in self["imports"]["commands"]]:
                        raise ValueError("Command '%s' already registered" % function.__name__)

            self["imports"][import_type] += function_list
            self.logger.debug("[%s] Updated import functions: %s" % (import_type, function_list))

            if import_type == "config_processing":
                for function in function_list:
                    self["custom_processing"][function.__name__] = function
                    self.logger.debug("Registered config processing function: %s" % function.__name__)
                    self._process_unprocessed(function.__name__.removeprefix("_process_").removesuffix("_multi"))

    @handle_plural
    def _process_modules(self, module: str) -> None:
        """Loads a module definition, registering its parameters and imports, then applying its values."""
        if module in self["modules"]:
            self.logger.debug("Module '%s' already loaded" % module)
            return

        self.logger.debug("Processing module: %s" % colorize(module, bold=True))
        module_path = Path(__file__).parent.parent / (module.replace(".", "/") + ".toml")
        if not module_path.exists():
            raise FileNotFoundError("Unable to locate module: %s" % module)

        with open(module_path, "rb") as module_file:
            try:
                module_config = load(module_file)
            except TOMLDecodeError as e:
                raise ValueError("Unable to load module config: %s" % module) from e

        # Types first, so values and processing functions can be applied in order
        custom_parameters = module_config.get("custom_parameters", {})
        if custom_parameters:
            self["custom_parameters"] = custom_parameters

        if imports := module_config.get("imports"):
            self["imports"] = imports

        for name, value in module_config.items():
            if name in ["imports", "custom_parameters"]:
                continue
            self.logger.debug("[%s] (%s) Setting value: %s" % (module, name, value))
            self[name] = value

        for custom_parameter in custom_parameters:
            self._process_unprocessed(custom_parameter)

        self["modules"].append(module)

    def validate(self) -> None:
        """Checks that all values were processed, then locks the config."""
        if self["_processing"]:
            raise ValueError("Unknown config parameters: %s" % ", ".join(self["_processing"].keys()))
        self["validated"] = True

    def __str__(self) -> str:
        return pretty_print({key: value for key, value in self.data.items() if not key.startswith("_")})
