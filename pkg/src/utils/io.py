from src.config.logging import logger
from src.errors import InvalidInput
from typing import Dict
from typing import Any
import json
import yaml
import os


def load_yaml(filename: str) -> Dict[str, Any]:
    """
    Load a YAML file and return its contents.

    Args:
        filename (str): The path to the YAML file.

    Returns:
        Dict[str, Any]: The parsed YAML object.

    Raises:
        InvalidInput: If the file is missing or is not valid YAML.
    """
    try:
        with open(filename, 'r') as file:
            return yaml.safe_load(file) or {}
    except FileNotFoundError:
        logger.error(f"File '{filename}' not found.")
        raise InvalidInput(f"config file '{filename}' not found")
    except yaml.YAMLError as e:
        logger.error(f"Error parsing YAML file '{filename}': {e}")
        raise InvalidInput(f"config file '{filename}' is not valid YAML")


def load_json(filename: str) -> Dict[str, Any]:
    """
    Load a JSON file and return its contents.

    Args:
        filename (str): The path to the JSON file.

    Returns:
        Dict[str, Any]: The parsed JSON object.

    Raises:
        InvalidInput: If the file is missing or is not valid JSON.
    """
    try:
        with open(filename, 'r') as file:
            return json.load(file)
    except FileNotFoundError:
        logger.error(f"File '{filename}' not found.")
        raise InvalidInput(f"config file '{filename}' not found")
    except json.JSONDecodeError as e:
        logger.error(f"File '{filename}' contains invalid JSON.")
        raise InvalidInput(f"config file '{filename}' is not valid JSON: {e.msg} at position {e.pos}")


def load_config_file(filename: str) -> Dict[str, Any]:
    """
    Load a run configuration; ``.json`` files go through the JSON parser, anything else through YAML.

    Raises:
        InvalidInput: If the file cannot be read or does not hold a mapping.
    """
    data = load_json(filename) if filename.lower().endswith('.json') else load_yaml(filename)
    if not isinstance(data, dict):
        logger.error(f"Config file '{filename}' does not contain a mapping.")
        raise InvalidInput(f"config file '{filename}' must contain a mapping")
    return data


def write_to_file(path: str, content: str) -> None:
    """
    Writes content to a specified file, replacing any previous report.

    Args:
        path (str): The path to the file.
        content (str): The content to write to the file.

    Raises:
        Exception: For any exception encountered during file writing.
    """
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as file:
            file.write(content)
        logger.info(f"Content written to file: {path}")
    except Exception as e:
        logger.error(f"Error writing to file '{path}': {e}")
        raise
