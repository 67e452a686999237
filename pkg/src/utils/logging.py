from tqdm import tqdm


def format_fields(**fields) -> str:
    return " ".join(f"{key}={value}" for key, value in fields.items())


def log(message: str, **fields) -> None:
    # tqdm.write keeps progress bars intact
    line = f"{message} {format_fields(**fields)}" if fields else message
    tqdm.write(line)
