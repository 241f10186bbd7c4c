from twostep.cli.algebra_file import (
    AlgebraDocument,
    document_from_entry,
    emit,
    load_document,
    parse_algebra_file,
)
from twostep.cli.commands import UsageError, build_parser, run_command
from twostep.cli.report import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, Report
