DATETIME_FORMAT = '%Y_%m_%d %H_%M_%S_%f'
