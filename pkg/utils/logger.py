# Copyright (c) 2025, Kousheek Chakraborty
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import csv
import logging
import os
from datetime import datetime


class CSVLogger:
    def __init__(self, folder_path=".", file_name=None):
        if not os.path.exists(folder_path):
            raise FileNotFoundError(f"The folder '{folder_path}' does not exist.")

        self.folder_path = folder_path
        self.file_name = file_name
        self.file_path = self._new_path()
        self.keys = []  # Keeps track of column headers
        self.file_initialized = False

    def _new_path(self):
        if self.file_name is not None:
            return os.path.join(self.folder_path, self.file_name)
        # Generate the file name with date and time stamp
        timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        return os.path.join(self.folder_path, f"log_{timestamp}.csv")

    def log(self, data_dict):
        """
        Logs a dictionary of key-value pairs into a CSV file.

        Args:
            data_dict (dict): A dictionary where keys are column names and values are scalars (int, str, bool, None).
        """
        for key, value in data_dict.items():
            if value is not None and not isinstance(value, (int, float, str, bool)):
                raise ValueError(f"Value for key '{key}' must be a scalar, got {type(value).__name__}.")

        # Initialize the CSV file if not already done
        if not self.file_initialized:
            self.keys = list(data_dict.keys())
            with open(self.file_path, mode="w", newline="") as file:
                writer = csv.DictWriter(file, fieldnames=self.keys)
                writer.writeheader()
            self.file_initialized = True

        # Check for new keys and update the CSV header if necessary
        new_keys = [key for key in data_dict.keys() if key not in self.keys]
        if new_keys:
            self.keys.extend(new_keys)
            # Rewrite the CSV file with the updated header
            with open(self.file_path) as file:
                rows = list(csv.DictReader(file))
            with open(self.file_path, mode="w", newline="") as file:
                writer = csv.DictWriter(file, fieldnames=self.keys)
                writer.writeheader()
                writer.writerows(rows)

        # Write the new row
        with open(self.file_path, mode="a", newline="") as file:
            writer = csv.DictWriter(file, fieldnames=self.keys)
            # Fill in missing keys with empty values
            row = {key: "" if data_dict.get(key) is None else data_dict[key] for key in self.keys}
            writer.writerow(row)

    def log_rows(self, rows):
        """Append many rows sharing the header of the first one."""
        if not rows:
            return
        self.log(rows[0])
        with open(self.file_path, mode="a", newline="") as file:
            writer = csv.DictWriter(file, fieldnames=self.keys)
            for row in rows[1:]:
                writer.writerow({key: "" if row.get(key) is None else row[key] for key in self.keys})


def configure_logging(verbose=False):
    """
    Route library loggers to stderr as "[INFO] message" lines.
    """
    level = logging.DEBUG if verbose else logging.INFO
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
